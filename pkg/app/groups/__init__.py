# Finite groups and characters
