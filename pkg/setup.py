from setuptools import setup, find_packages

setup(
    name="dcsparse",
    version="0.1.0",
    description="Sparse regression with difference-of-convex penalties",
    author="dcsparse developers",
    packages=find_packages(exclude=["tests*", "examples*"]),
    install_requires=[
        "numpy>=1.22.0",
        "scipy>=1.9.0",
        "pandas>=1.5.0",
        "pydantic>=2.0.0",
        "pydantic-settings>=2.0.0",
        "typer>=0.9.0",
        "rich>=13.0.0",
    ],
    python_requires=">=3.9",
    entry_points={
        "console_scripts": [
            "dcsparse=dcsparse.cli.main:app",
        ],
    },
)
