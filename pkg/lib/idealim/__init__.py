from . import config,error,utils
from . import natset,ideals,sequences,cluster,construct,verify
Config = config.defaults

__all__ = 'natset','ideals','sequences','cluster','construct','verify','config','error','utils'

## globally changing the prefix limit
def setmaxprefix(N):
    '''Sets the largest prefix length accepted by the command line'''
    if not isinstance(N, int) or N < 1:
        raise error.InputError(N, 'setmaxprefix', 'the prefix limit must be a positive integer')
    Config.cli.max_prefix = N

from .natset import analyze,simplify
from .ideals import contains,bp_witness
from .cluster import cluster_points_exact,cluster_points_prefix
