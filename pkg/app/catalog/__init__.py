# Catalog of standard algebras and graded fixtures
