"""Line artefact detection in lung-ultrasound-like images.

Quantifies pleural, horizontal (A-type) and vertical (B-type) line
artefacts by sparse reconstruction in the Radon domain with a Cauchy
penalty, followed by peak detection and two-stage validation.
"""

__version__ = "0.1.0"
