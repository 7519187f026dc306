from setuptools import find_packages, setup


install_requires=[
    'click',
    'numpy',
    'pandas',
    'pyyaml',
    'scipy'
]

setup(name='hicomm',
      version='0.1dev',
      description='Higher commutators, centrality and commutator series of universal algebras',
      packages=find_packages(exclude=['tests']),
      install_requires=install_requires,
      entry_points={
          'console_scripts': ['hicomm=hicomm.cli:main']
      },
      test_suite='tests',
      tests_require=['pytest', 'hypothesis']
)
