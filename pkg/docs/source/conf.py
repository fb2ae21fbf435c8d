"""Sphinx configuration of the compton-width documentation."""
import datetime
import os
import sys

# the package lives two levels above docs/source
sys.path.insert(0, os.path.abspath(os.path.join("..", "..")))

project = "compton-width"
author = "compton-width developers"
copyright = f"{datetime.date.today().year}, {author}"  # pylint: disable=redefined-builtin
release = "0.1.0"
version = ".".join(release.split(".")[:2])

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.mathjax",
    "sphinx_copybutton",
]

templates_path = ["_templates"]
exclude_patterns: list = []

autosummary_generate = True
autodoc_member_order = "bysource"
autodoc_typehints = "description"
autodoc_default_options = {
    "members": True,
    "undoc-members": True,
    "show-inheritance": True,
}

html_theme = "sphinx_rtd_theme"
html_title = f"compton-width {release}"
