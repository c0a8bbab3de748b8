"""Strongly algebraic geometric scroll codes over P^1."""
