"""Collect the test harness at the bottom of every idealim module for pytest"""
import os,sys,subprocess
import pytest

root = os.path.join(os.path.dirname(os.path.abspath(__file__)), os.pardir, 'lib')
modules = 'config,utils,natset,ideals,sequences,cluster,construct,verify,cli'.split(',')

@pytest.mark.parametrize('name', modules)
def test_module_harness(name):
    env = dict(os.environ, PYTHONPATH=os.pathsep.join(filter(None, (root, os.environ.get('PYTHONPATH')))))
    assert subprocess.call([sys.executable, '-m', 'idealim.{:s}'.format(name)], env=env) == 0
