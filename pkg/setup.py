import setuptools

with open('README.md', 'r') as f:
    long_description = f.read()

setuptools.setup(
    name='mplinalg',
    version='0.1.0',
    description='Double-double and quad-double dense matrix multiplication and pivot-free LU, with a benchmark CLI',
    license='MIT',
    long_description=long_description,
    long_description_content_type='text/markdown',
    keywords=['double-double', 'quad-double', 'strassen', 'winograd', 'lu', 'multiple-precision', 'benchmark'],
    packages=setuptools.find_packages(exclude=['test', 'test.*']),
    python_requires='>=3.9',
    install_requires=['mpmath', 'numpy'],
    entry_points={
        'console_scripts': [
            'mplinalg-bench=mplinalg.bench.cli:main',
        ],
    },
    classifiers=[
        'Topic :: Scientific/Engineering :: Mathematics',
        'Intended Audience :: Science/Research',
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
    ]
)
