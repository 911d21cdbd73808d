# Test suite for the quiver Köthe toolkit
