"""
Scripts Package for the quiver Köthe toolkit
============================================

quiver_tool.py     - command-line entry point (classify, indecs, roots,
                     koethe, separated, dimseq, reps, crosscheck)
"""

__version__ = "0.3.0"
__description__ = "Command-line scripts for valued quivers and Köthe decisions"
