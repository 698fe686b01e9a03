from .schema import *
from .elliptic import *
from .quotient import *
