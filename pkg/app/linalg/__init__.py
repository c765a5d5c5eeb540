# Exact scalars and linear algebra
