"""Family I: syntactic translations through a shared first-order intermediate form."""
