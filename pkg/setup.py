"""Decides reversibility and reverse-complement closure of cyclic codes over Z4 + vZ4."""
from pathlib import Path

from setuptools import setup, find_packages

with (Path(__file__).parent / 'README.md').open(encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='revcyclic',
    use_scm_version={
        "fallback_version": "development0",
        "write_to": "python/revcyclic/version.py"
    },
    description='Reversible and reverse-complement cyclic codes over non-chain Z4 rings.',
    long_description=long_description,
    long_description_content_type='text/markdown',
    python_requires='>=3.8',
    author='University of Minnesota NLP/IE Group',
    author_email='nlp-ie@umn.edu',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: MacOS :: MacOS X',
        'Operating System :: POSIX :: Linux',
        'Programming Language :: Python :: 3 :: Only',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    keywords='coding theory cyclic codes dna codes',
    entry_points={'console_scripts': ['revcyclic=revcyclic.cli:main'], },
    package_dir={'': 'python'},
    packages=find_packages(where='python', exclude=['tests']),
    package_data={
        'revcyclic': ['defaultConfig.yml', 'examples/workedExamples.yml']
    },
    install_requires=[
        'numpy',
        'pyyaml',
        'regex',
        'tqdm'
    ],
    setup_requires=[
        'setuptools_scm',
    ],
    tests_require=[
        'pytest',
        'hypothesis'
    ],
    extras_require={
        'tests': ['pytest', 'hypothesis'],
        'docs': ['sphinx']
    }
)
