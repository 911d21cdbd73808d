# Valued quivers, dimension vectors and diagram classification
