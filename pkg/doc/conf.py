# -*- coding: utf-8 -*-
#
# qdiscord documentation build configuration file.
#
import sys
import os

sys.path.insert(0, os.path.abspath('..'))

from qdiscord import __version__

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'qdiscord'
copyright = u'2017, Quantum Espresso Foundation and SISSA'
author = u'qdiscord developers'

version = '.'.join(__version__.split('.')[:2])
release = __version__

language = None
exclude_patterns = ['_build']
pygments_style = 'sphinx'
todo_include_todos = False

html_theme = 'default'
html_static_path = []
htmlhelp_basename = 'qdiscorddoc'

latex_elements = {
}
latex_documents = [
    (master_doc, 'qdiscord.tex', u'qdiscord Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'qdiscord', u'qdiscord Documentation', [author], 1)
]

texinfo_documents = [
    (master_doc, 'qdiscord', u'qdiscord Documentation', author, 'qdiscord',
     'Global quantum discord of noisy three-qubit states.', 'Miscellaneous'),
]
