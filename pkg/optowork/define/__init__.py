from optowork.core.define import CSV_EMPTY
from optowork.core.define import DEFAULT_PHI
from optowork.core.define import DEFAULT_THETA
from optowork.core.define import MEASUREMENT_KINDS
from optowork.core.define import META_SUFFIX
from optowork.core.define import QUANTITIES
from optowork.core.define import SUBSYSTEMS
from optowork.core.define import SYSTEM1_MIRROR_MODES
from optowork.core.define import SYSTEM1_OPTIC_MODES
from optowork.core.define import SYSTEM2_OPTIC_MODES
from optowork.core.define import VACUUM_VARIANCE
from optowork.core.define import WORK_QUANTITIES
from optowork.core.define import ExitCode
from optowork.core.define import MeasurementKind
from optowork.core.define import Mode
from optowork.core.define import Quantity
from optowork.core.define import Subsystem
from optowork.core.define import Verdict
