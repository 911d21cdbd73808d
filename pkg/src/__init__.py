# Quiver Köthe toolkit - valued quivers, reflection calculus and Köthe decisions
# This package contains the library behind scripts/quiver_tool.py
