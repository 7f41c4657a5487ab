from . import graphs
from . import paths
from . import stats
from . import ensembles
from . import neuro
