from .skyline import SkylineFilling, Triple, is_inversion, triples_of, weight
from .reverse import ReverseSSYT, enumerate_revssyt, enumerate_ssyt
from .models import AVAILABLE_MODELS, enumerate_fillings, get_model, is_valid
from .destandardize import dst, dst_q, dst_preimages, is_particle_highest, is_quasi_yamanouchi
