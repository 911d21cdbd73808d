# Matrix representations, reflection functors, radical and top
