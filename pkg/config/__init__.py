# Settings for the quiver Köthe toolkit
