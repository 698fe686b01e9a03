from .constants import *
from .errors import *
from .toolkit import *
from .ramification import *
from .metric_graph import *
from .harmonic_cover import *
from .different import *
from .builders import *
from .documents import *
from .config import *
from .render import *
from .checker import *

from importlib.metadata import version

__version__ = version("carefree-skeleta")
from .cli import *
