# Configuration and the exception hierarchy
