from setuptools import setup, find_packages

setup(
    name="skyline-bases",
    version="0.1",
    packages=find_packages('src'),
    package_dir={'': 'src'},
    install_requires=[
        "networkx>=3.2",
        "numpy>=1.26",
        "tqdm>=4.66",
    ],
    entry_points={
        "console_scripts": ["skb = skb.cli:run"],
    },
)
