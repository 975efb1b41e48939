from optowork.core.errors import ConfigError
from optowork.core.errors import DomainError
from optowork.core.errors import Error
from optowork.core.errors import IndexOutOfRange
from optowork.core.errors import IoError
from optowork.core.errors import MaxWorkUndefined
from optowork.core.errors import NotPositiveDefinite
from optowork.core.errors import PatternMismatch
from optowork.core.errors import SingularSystem
from optowork.core.errors import UnknownPreset
from optowork.core.errors import UnstableSystem
