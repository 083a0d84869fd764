from setuptools import setup, find_packages

setup(
    name="causet",
    version="0.1.0",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    py_modules=["main"],
    package_data={
        "causet.corpus": ["sources/*.cm"],
    },
    install_requires=[
        "python-dotenv==1.0.0",
        "networkx==3.1",
    ],
    python_requires=">=3.9",
    entry_points={
        "console_scripts": [
            "causet=main:main",
        ],
    },
)
