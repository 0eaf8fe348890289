# Handleslide reduction of simple diagrams on once-punctured surfaces.
