"""
Setup script for abflux - Aharonov-Bohm flux scattering
"""

from setuptools import setup, find_packages
from pathlib import Path

# Read README for long description
readme_file = Path(__file__).parent / "README.md"
long_description = readme_file.read_text() if readme_file.exists() else ""

# Read requirements
requirements = [
    "click>=8.0",
    "pydantic>=2.0",
    "numpy>=1.22",
    "scipy>=1.8",
]

setup(
    name="abflux",
    version="0.1.0",
    author="abflux developers",
    description="Partial-wave scattering by a hard sphere threaded by an Aharonov-Bohm flux line",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Physics",
    ],
    python_requires=">=3.9",
    install_requires=requirements,
    extras_require={
        "dev": ["pytest>=7.0", "pytest-cov>=4.0", "mpmath>=1.2", "black>=23.0", "flake8>=6.0", "mypy>=1.0"],
    },
    entry_points={
        "console_scripts": [
            "abflux=abflux.cli:main",
        ],
    },
)
