# Reversible operations on a DiagramState.
