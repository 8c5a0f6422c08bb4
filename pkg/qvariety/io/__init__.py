"""Reading and writing data in external formats."""
