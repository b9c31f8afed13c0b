# -*- coding: utf-8 -*-
#
# stokes-darcy-gfdm documentation build configuration file.
import pathlib
import time

import stokes_darcy_gfdm

# -- Project information -----------------------------------------------------

project = 'stokes-darcy-gfdm'
copyright = f'2022-{time.localtime().tm_year}, The stokes-darcy-gfdm developers'

# The full version, including alpha/beta/rc tags.
release = stokes_darcy_gfdm.__version__
# The short X.Y version.
version = '.'.join(stokes_darcy_gfdm.__version__.split('.')[:2])

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.intersphinx',
    'sphinx.ext.viewcode',
    'sphinx_copybutton',
    'sphinx_click',
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3.8', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
}

filepath_docs = pathlib.Path(__file__).parent.parent
filepath_src = filepath_docs.parent / 'src'

# Settings for the `sphinx_copybutton` extension
copybutton_selector = 'div:not(.no-copy)>div.highlight pre'
copybutton_prompt_text = r'>>> |\.\.\. |(?:\(.*\) )?\$ |In \[\d*\]: | {2,5}\.\.\.: | {5,8}: '
copybutton_prompt_is_regexp = True

templates_path = ['_templates']
exclude_patterns = []

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_book_theme'
html_search_language = 'en'
htmlhelp_basename = 'stokes-darcy-gfdmdoc'

# Warnings to ignore when using the -n (nitpicky) option
nitpick_ignore = [
    ('py:class', 'numpy.ndarray'),
    ('py:class', 'scipy.sparse.csr_matrix'),
]
