# Coxeter tower and reflection of dimension vectors
