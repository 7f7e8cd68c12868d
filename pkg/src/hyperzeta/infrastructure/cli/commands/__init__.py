from .eval import *
from .poles import *
from .grid import *
from .sample import *
from .selfcheck import *

COMMANDS = (EvalCommand, PolesCommand, GridCommand, SampleCommand, SelfCheckCommand)
