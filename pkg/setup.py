#!/usr/bin/env python
from setuptools import setup, find_packages
import stewart

with open('README.md', 'r') as fh:
    long_description = fh.read()

REQUIREMENTS = [
    'Django>=3.2,<5.1',
    'djangorestframework>=3.12,<4',
    'lark>=1.1.5,<2',
    'numpy>=1.21',
]

CLASSIFIERS = [
    'Environment :: Console',
    'Framework :: Django',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: BSD License',
    'Operating System :: OS Independent',
    'Programming Language :: Python',
    'Programming Language :: Python :: 3.8',
    'Programming Language :: Python :: 3.9',
    'Programming Language :: Python :: 3.10',
    'Programming Language :: Python :: 3.11',
    'Framework :: Django :: 3.2',
    'Framework :: Django :: 4.2',
    'Topic :: Scientific/Engineering :: Mathematics',
]

setup(
    author="The django-stewart developers",
    name="django-stewart",
    version=stewart.__version__,
    description="Toeplitz words, the Stewart automaton and a first-order decision procedure for base-k automatic sequences",
    long_description=long_description,
    long_description_content_type='text/markdown',
    license='BSD License',
    platforms=['OS Independent'],
    classifiers=CLASSIFIERS,
    packages=find_packages(exclude=['tests', 'docs']),
    package_data={'stewart': ['queries/*.txt']},
    include_package_data=True,
    zip_safe=False,
    install_requires=REQUIREMENTS,
)
