# Lie algebras by structure constants
