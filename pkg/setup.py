"""Script de configuration du projet."""

from setuptools import find_packages, setup

setup(
    name="mmnl-assortment",
    version="1.0.0",
    description="Résolution exacte de l'assortiment sous logit multinomial mixte avec contraintes de capacité",
    author="",
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.10",
    install_requires=[
        "fastapi>=0.104.1",
        "uvicorn[standard]>=0.24.0",
        "pydantic>=2.8.0",
        "pydantic-settings>=2.1.0",
        "numpy>=1.26.0",
        "scipy>=1.11.0",
        "pandas>=2.1.0",
        "networkx>=3.2",
        "mip>=1.15.0",
        "aiofiles>=23.2.1",
        "python-dotenv>=1.0.0",
        "python-json-logger>=2.0.7",
    ],
    extras_require={"gurobi": ["gurobipy>=11.0"]},
    entry_points={"console_scripts": ["mmnl-assortment=app.cli:main"]},
)
