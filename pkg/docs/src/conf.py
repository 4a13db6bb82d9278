# Configuration file for the Sphinx documentation builder.
#
# Only the settings these pages use are set here. For the full list see
# http://www.sphinx-doc.org/en/master/config

import os
import sys

sys.path.insert(0, os.path.abspath("../../src"))

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.intersphinx",
    "sphinx.ext.viewcode",
    "sphinx_automodapi.automodapi",
    "sphinx_automodapi.smart_resolver",
]

# The runtime stack is mocked so that the API pages build without it
autodoc_mock_imports = [
    "numpy",
    "pandas",
    "xarray",
    "h5py",
    "sympy",
    "msgpack",
    "msgpack_numpy",
]

source_suffix = [".rst"]
master_doc = "index"

project = "Ideal Divisors"
copyright = "2026, Ideal Divisors Developers"
author = "Ideal Divisors Developers"
version = "0.1.0"
release = "0.1.0"

exclude_patterns = []
pygments_style = "sphinx"
numpydoc_show_class_members = False

# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"
html_show_sourcelink = False
htmlhelp_basename = "ideal-divisors-doc"

intersphinx_mapping = {"python": ("https://docs.python.org/3", None)}
