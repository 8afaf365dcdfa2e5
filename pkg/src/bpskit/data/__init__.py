"""Bundled sample inputs."""

from importlib.resources import files


def local_p2_path():
    """Filesystem location of the bundled local P^2 sample series file."""
    return files(__package__).joinpath("local_p2.series")


def local_p2_text() -> str:
    """Contents of the bundled local P^2 sample series file."""
    return local_p2_path().read_text(encoding="utf-8")
