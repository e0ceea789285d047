from codecs import open
from os import path

from setuptools import setup, find_packages

here = path.abspath(path.dirname(__file__))

with open(path.join(here, 'README.rst'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='PyPhishKey',

    version='1.0.0',

    description='Phishing URL detection from lexical and keyword features of the URL alone',
    long_description=long_description,

    license='MIT',

    classifiers=[
        'Development Status :: 3 - Alpha',

        'Intended Audience :: Science/Research',
        'Intended Audience :: Information Technology',
        'Topic :: Security',
        'Topic :: Scientific/Engineering :: Artificial Intelligence',

        'License :: OSI Approved :: MIT License',

        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
    ],

    keywords='phishing, URL, lexical features, keywords, random forest, gradient boosting, SVM, MLP, kNN',

    packages=find_packages(exclude=['build', 'test']),

    install_requires=['cleo==0.6.8',
                      'numpy',
                      'pandas>=1.3'],

    test_suite='test',

    entry_points={
        'console_scripts': [
            'pyphishkey = pyphishkey:main',
        ],
    }
)
