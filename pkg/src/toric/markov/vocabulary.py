"""
Vocabularies

https://docs.plone.org/develop/plone/forms/vocabularies.html
"""

from zope.schema.vocabulary import SimpleVocabulary

UNIQUE = 'UNIQUE'
NOT_UNIQUE = 'NOT_UNIQUE'

verdicts = SimpleVocabulary.fromValues([UNIQUE, NOT_UNIQUE])

output_formats = SimpleVocabulary.fromValues(['text', 'json', 'yaml'])

methods = SimpleVocabulary.fromValues(['nabla', 'grobner', 'both'])

log_levels = SimpleVocabulary.fromValues(['DEBUG', 'INFO', 'WARNING', 'ERROR'])

kronecker_factor_kinds = ('ones-row', 'identity')

# commands that need a model matrix as input
model_commands = [
    'validate',
    'fiber',
    'nabla',
    'degrees',
    'grobner',
    'markov',
    'indispensable',
    'monomials',
    'verdict',
    'lawrence-verdict',
    'report',
    'certificate',
    'lawrence',
]

commands = SimpleVocabulary.fromValues(model_commands + ['kron'])

# commands whose output depends on a user supplied degree
degree_commands = ['fiber', 'nabla']
