# -*- coding: utf-8 -*-
import sys
import os
import sphinx_bootstrap_theme
from pyquickhelper.helpgen.default_conf import set_sphinx_variables, get_default_stylesheet

html_theme = 'bootstrap'
html_theme_path = sphinx_bootstrap_theme.get_html_theme_path()

sys.path.insert(0, os.path.abspath(os.path.join(os.path.split(__file__)[0])))

set_sphinx_variables(__file__, "fuzzystab", "fuzzystab contributors", 2026,
                     html_theme, html_theme_path, locals(),
                     title="Stability of fuzzy differential equations",
                     book=True)

html_context = {
    'css_files': get_default_stylesheet(),
}

html_theme_options = {
    'navbar_title': "fuzzystab",
    'navbar_site_name': "Site",
    'navbar_links': [
        ("index", "genindex"),
    ],
    'navbar_sidebarrel': True,
    'navbar_pagenav': True,
    'navbar_pagenav_name': "Page",
    'bootswatch_theme': "readable",
    'bootstrap_version': "3",
    'source_link_position': "footer",
}

language = "en"

preamble = '''
\\usepackage{amsmath}
\\usepackage{amssymb}
\\usepackage{amsfonts}
\\newcommand{\\R}{\\mathbb{R}}
\\newcommand{\\pa}[1]{\\left(#1\\right)}
'''

imgmath_latex_preamble = preamble
latex_elements['preamble'] = preamble
mathdef_link_only = True

epkg_dictionary.update({
    'DOP853': 'https://docs.scipy.org/doc/scipy/reference/generated/scipy.integrate.DOP853.html',
    'hypothesis': 'https://hypothesis.readthedocs.io/',
    'Hukuhara difference': 'https://en.wikipedia.org/wiki/Hukuhara_difference',
    'pandas': 'https://pandas.pydata.org/',
    'Pratt parser': 'https://en.wikipedia.org/wiki/Operator-precedence_parser#Pratt_parsing',
    'scipy': 'https://scipy.org/',
})
