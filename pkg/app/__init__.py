# gradedlie application package
