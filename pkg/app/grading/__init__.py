# Gradings, certificates and duality
