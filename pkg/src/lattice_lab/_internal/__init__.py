"""Exact linear algebra, reduction and enumeration kernels used by the public modules."""
