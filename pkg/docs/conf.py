# -*- coding: utf-8 -*-
#
# Sphinx configuration for the hicomm documentation.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

extensions = [
    'sphinxcontrib.apidoc',
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx.ext.mathjax',
]

# API pages are regenerated from the package on every build
apidoc_module_dir = '../hicomm'
apidoc_output_dir = 'api'
apidoc_separate_modules = True

napoleon_google_docstring = True
napoleon_numpy_docstring = False

autodoc_warningiserror = True

master_doc = 'index'
exclude_patterns = ['_build']

project = u'hicomm'
author = u'the hicomm developers'
copyright = u'2026, ' + author
version = release = u'0.1dev'

pygments_style = 'sphinx'
html_theme = 'sphinx_rtd_theme'
