from setuptools import setup, find_packages

with open("README.md", "r") as f:
    long_description = f.read()

setup(
    name="shortwide",
    version="0.0.1",
    description="Short-and-wide (bottleneck) path distances and network statistics",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests"]),
    package_data={"shortwide.data": ["*.txt", "*.csv"]},
    python_requires=">=3.9",
    install_requires=['numpy', 'scipy', 'pandas', 'statsmodels', 'POT',
                      'networkx', 'joblib'],
    extras_require={"test": ["pytest"]},
    entry_points={"console_scripts": ["shortwide=shortwide.cli:main"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
    ]
)
