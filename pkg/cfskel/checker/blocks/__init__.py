from .load import *
from .cover import *
from .different import *
from .euler import *
