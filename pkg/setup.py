"""setuptools installation script for qvariety package"""

from setuptools import setup


setup()
