# -*- coding: utf-8 -*-
#
# pycoherence documentation build configuration file.

import os
import sys

sys.path.insert(0, os.path.abspath("../.."))

from recommonmark.parser import CommonMarkParser

source_parsers = {
    ".md": CommonMarkParser,
}

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.todo",
    "sphinx.ext.viewcode",
    "sphinx.ext.mathjax",
]

autodoc_member_order = "bysource"
autoclass_content = "both"

templates_path = ["_templates"]
source_suffix = [".rst", ".md"]
master_doc = "index"

project = "pycoherence"
copyright = "2026, pycoherence developers"
author = "pycoherence developers"
version = release = "0.3.0"
language = None
exclude_patterns = []
pygments_style = "default"
todo_include_todos = True

html_theme = "sphinx_rtd_theme"
html_theme_options = {
    "collapse_navigation": False,
    "display_version": True,
    "navigation_depth": 3,
}
htmlhelp_basename = "pycoherencedoc"

latex_documents = [
    (master_doc, "pycoherence.tex", "pycoherence Documentation", author, "manual"),
]
man_pages = [(master_doc, "pycoherence", "pycoherence Documentation", [author], 1)]
texinfo_documents = [
    (
        master_doc,
        "pycoherence",
        "pycoherence Documentation",
        author,
        "pycoherence",
        "Cross-modal guided ordering of paired sentence and image sets.",
        "Miscellaneous",
    ),
]

epub_title = project
epub_author = author
epub_publisher = author
epub_copyright = copyright

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable", None),
}
