# Unit tests, one file per library module
