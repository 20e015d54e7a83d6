from setuptools import setup

with open('README.md') as f:
    long_description = f.read()
    long_description += '\n\n'
with open('CHANGELOG.md') as f:
    long_description += f.read()

setup(
    name='toric.markov',
    version='0.1.0.dev0',
    description='toric.markov: Markov bases and indispensable binomials of toric ideals',
    long_description=long_description,
    long_description_content_type="text/markdown",
    install_requires=[
        'Setuptools',
        'ruamel.yaml',
        'zope.schema',
        'zope.interface',
        'sympy',
        'networkx',
    ],
    extras_require={
        'test': ['pytest'],
    },
    packages=[
        'toric.markov',
        'toric.cli',
    ],
    keywords=['toric ideal', 'Markov basis', 'Groebner basis', 'algebraic statistics'],
    classifiers=[
        "Programming Language :: Python",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
        'Development Status :: 3 - Alpha',
    ],
    include_package_data=True,
    package_data={'toric.markov': ['data/*.yaml']},
    zip_safe=False,
    package_dir={'': 'src'},
    entry_points={
        'console_scripts': [
            'toric_markov = toric.cli:main',
        ]
    },
)
