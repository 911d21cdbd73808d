# Köthe deciders for hereditary and radical-square-zero species
