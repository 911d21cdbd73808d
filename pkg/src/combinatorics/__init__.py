# Dimension-sequence arithmetic
