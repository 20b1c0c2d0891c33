"""
ViesPy Data IO
Persistência de datasets (CSV), modelos (JSON) e manifestos
"""

from .datasets import read_dataset, write_dataset, dataset_frame
from .models import ModelDocument, read_model, read_model_document, write_model
from .manifests import (
    companion_path,
    write_manifest,
    read_sampling_manifest,
    read_truth_manifest,
)

__all__ = [
    'read_dataset',
    'write_dataset',
    'dataset_frame',
    'ModelDocument',
    'read_model',
    'read_model_document',
    'write_model',
    'companion_path',
    'write_manifest',
    'read_sampling_manifest',
    'read_truth_manifest',
]
