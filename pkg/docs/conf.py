#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Sphinx configuration for the ramsey-turan documentation.

import sys, os

# Get the project root dir, which is the parent dir of this
cwd = os.getcwd()
project_root = os.path.dirname(cwd)

# Insert the project root dir as the first element in the PYTHONPATH.
# This lets us ensure that the source package is imported, and that its
# version is used.
sys.path.insert(0, project_root)

# -- General configuration -----------------------------------------------------

extensions = [
    'sphinx.ext.viewcode',
    'sphinx.ext.todo',
]

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'ramsey-turan'
copyright = u'2026, the ramsey-turan authors'

import ramsey_turan
version = ramsey_turan.__version__
release = ramsey_turan.__version__

exclude_patterns = ['_build', 'schemas']

default_role = 'code'

pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'furo'

htmlhelp_basename = 'ramsey_turandoc'

man_pages = [
    ('index', 'ramsey-turan', u'ramsey-turan',
     [u'the ramsey-turan authors'], 1)
]
