import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="rmtlab",
    description="rmtlab - Monte Carlo laboratory for CLTs of random quadratic forms in projected sample means",
    version="1.0.0",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=("tests",)),
    entry_points={
        'console_scripts': ['rmtlab=rmtlab.cli.commands:cli'],
    },
    classifiers=(
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)"
    ),
    python_requires='>=3.8',
    install_requires=[
        "numpy",
        "scipy"
    ],
    tests_require=[
        "pytest",
        "coverage"
    ]
)
