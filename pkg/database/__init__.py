"""Result store: SQLAlchemy models and the connection manager."""
