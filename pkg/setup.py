#!/usr/bin/env python3
from setuptools import find_packages
from setuptools import setup


setup(
    name='tetra',
    version='0.1.0',
    description='Exact projective geometry over prime fields',
    install_requires=[
        'PyYAML',
        'marshmallow>=3.13,<4',
        'numpy',
        'galois',
        'sympy',
    ],
    packages=find_packages(),
    package_data={
        'tetra.replay': ['fixtures/*.yaml', 'fixtures/*.ideal', 'fixtures/*.map'],
    },
    entry_points={
        'console_scripts': [
            'tetra-replay=tetra.replay.__main__:main',
        ]
    }
)
