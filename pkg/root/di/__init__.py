# flake8: noqa: F403
from root.di.analysis import *
from root.di.runs import *
from root.di.sweeps import *
