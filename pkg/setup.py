from setuptools import find_packages, setup

requirements = ["numpy>=1.17", "scipy>=1.3", "boto3>=1.9.83"]


setup(
    name="hsbnn",
    version="1.0.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    license="Apache License 2.0",
    long_description=open("README.md").read(),
    install_requires=requirements,
    entry_points={"console_scripts": ["hsbnn=hsbnn.cli:main"]},
    extras_require={
        "dev": [
            "pytest>=3.6.2",
            "ipython",
            "setuptools",
            "wheel",
            "ipdb",
            "black>=18.6b4",
            "pre-commit",
            "isort",
            "flake8",
            "mypy",
            "moto<5",
            "bandit",
            "twine",
        ]
    },
    classifiers=["License :: OSI Approved :: Apache Software License"],
)
