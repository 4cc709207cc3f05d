"""Hermitian self-orthogonal GRS codes and the quantum MDS codes they give."""

__version__ = "0.1.0"
