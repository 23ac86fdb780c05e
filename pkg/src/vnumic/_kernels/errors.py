class KernelOverflow(Exception):
    """Inputs exceed the compiled kernel's integer range."""
