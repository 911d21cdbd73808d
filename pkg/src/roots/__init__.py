# Symmetrizers, bilinear forms and positive roots
