"""Hilbert-curve image encodings for molecular sequences.

Maps each residue of a protein or nucleotide sequence to a distance
along a space-filling curve, producing small grayscale images whose
locality mirrors sequence position.  Includes a chaos-game baseline,
FASTA/CSV ingestion, deterministic dataset splitting, and PGM/PNG/CSV
image export.
"""

from .cgr import CgrConfig, encode_cgr, perimeter_anchors
from .curve import (
    MAX_INDEX_BITS,
    CurveParams,
    compute_theta,
    distance_from_point,
    point_from_distance,
)
from .dataio import (
    DatasetManifest,
    ManifestRow,
    SequenceRecord,
    export_images,
    parse_fasta,
    parse_labeled_csv,
    read_pgm,
    split_dataset,
    write_image,
    write_pgm,
    write_png,
)
from .encoder import (
    ALPHABETS,
    DNA_4,
    PROTEIN_20,
    Alphabet,
    EncodedImage,
    EncodingConfig,
    EncodingMeta,
    distance_for_symbol,
    encode_sequence,
    index_mapping,
    normalize,
)
from .errors import (
    DomainError,
    EncodeError,
    HilbertSeqError,
    ParseError,
    SchemaError,
    SizingError,
    SplitError,
    UnknownSymbolError,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHABETS",
    "Alphabet",
    "CgrConfig",
    "CurveParams",
    "DNA_4",
    "DatasetManifest",
    "DomainError",
    "EncodeError",
    "EncodedImage",
    "EncodingConfig",
    "EncodingMeta",
    "HilbertSeqError",
    "MAX_INDEX_BITS",
    "ManifestRow",
    "PROTEIN_20",
    "ParseError",
    "SchemaError",
    "SequenceRecord",
    "SizingError",
    "SplitError",
    "UnknownSymbolError",
    "compute_theta",
    "distance_for_symbol",
    "distance_from_point",
    "encode_cgr",
    "encode_sequence",
    "export_images",
    "index_mapping",
    "normalize",
    "parse_fasta",
    "parse_labeled_csv",
    "perimeter_anchors",
    "point_from_distance",
    "read_pgm",
    "split_dataset",
    "write_image",
    "write_pgm",
    "write_png",
    "__version__",
]
