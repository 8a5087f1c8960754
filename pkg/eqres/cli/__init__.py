from .builtins import CLI_BUILTINS
from .manager import EqresCLIManager
from .register import EqresCommandRegister
