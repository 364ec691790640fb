import ast
import re
from setuptools import setup


def version():
    pyfile = "garsidelab/__init__.py"
    with open(pyfile) as fp:
        data = fp.read()

    match = re.search(r"__version_info__ = (\(.*\))", data)
    assert match, f"cannot find version in {pyfile}"
    vinfo = ast.literal_eval(match.group(1))
    return ".".join(str(v) for v in vinfo)


setup(
    name="garsidelab",
    version=version(),
    description="Garside normal forms, rigid conjugacy sets and a family of rigid braids",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    license="MIT",
    packages=["garsidelab", "garsidelab.family", "garsidelab.io"],
    zip_safe=False,
    install_requires=["networkx>=2.6"],
    entry_points={
        "console_scripts": [
            "garsidelab = garsidelab.__main__:main",
        ]
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Programming Language :: Python :: Implementation :: CPython",
        "Programming Language :: Python :: Implementation :: PyPy",
        "Programming Language :: Python",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
)
