#!/usr/bin/env python3
"""Run the test harness at the bottom of every idealim module"""
import os,sys,subprocess

root = os.path.join(os.path.dirname(os.path.abspath(__file__)), os.pardir, 'lib')
modules = 'config,utils,natset,ideals,sequences,cluster,construct,verify,cli'.split(',')

def run(name):
    env = dict(os.environ, PYTHONPATH=os.pathsep.join(filter(None, (root, os.environ.get('PYTHONPATH')))))
    return subprocess.call([sys.executable, '-m', 'idealim.{:s}'.format(name)], env=env)

if __name__ == '__main__':
    names = sys.argv[1:] or modules
    failed = [name for name in names if run(name) != 0]
    for name in failed:
        print('FAILED: idealim.{:s}'.format(name))
    sys.exit(1 if failed else 0)
