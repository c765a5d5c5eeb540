# Structure theory of graded algebras
