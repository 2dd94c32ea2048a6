#!/usr/bin/env python

from setuptools import find_packages, setup

exec(open("qcatalog/version.py").read())

setup(
    name="qcatalog",
    description="Finite-dimensional quantum states as catalogs of probabilistic predictions: "
    "Born rule, subspace lattices, measurement and EPR/Bell simulation.",
    license="Apache Software License 2.0",
    include_package_data=True,
    packages=find_packages(include=["qcatalog", "qcatalog.*"]),
    install_requires=[
        "numpy >= 1.17.0",
        "PyYAML >= 5.3",
        "tqdm",
    ],
    python_requires=">=3.8",
    classifiers=[
        "Development Status :: 2 - Pre-Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Natural Language :: English",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Topic :: Scientific/Engineering :: Physics",
    ],
    test_suite="tests",
    tests_require=[
        "pytest",
        "hypothesis",
        "scipy",
    ],
    version=__version__,
    zip_safe=False,
)
