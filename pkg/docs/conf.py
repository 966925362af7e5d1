# Sphinx configuration for the boxmis documentation.
import os
import sys
sys.path.insert(0, os.path.abspath('..'))

project = 'boxmis'
copyright = '2024, boxmis developers'
author = 'boxmis developers'
version = '0.1'
release = '0.1.0'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx_rtd_theme',
]
autodoc_default_options = {
    'member-order': 'bysource',
    'show-inheritance': True,
}

master_doc = 'index'
language = 'ja'
exclude_patterns = ['_build', 'README.txt']
pygments_style = 'sphinx'
html_theme = 'sphinx_rtd_theme'
