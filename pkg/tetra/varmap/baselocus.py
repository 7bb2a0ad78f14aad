import logging

from tetra.groebner import Ideal
from tetra.groebner import irrelevant_ideal


logger = logging.getLogger('tetra.varmap')


def base_ideal(phi):
    """The forms of `phi` together with its source ideal."""
    return phi.forms_ideal()


def base_locus(phi):
    """Ideal of the base locus of `phi`, saturated by the irrelevant
    ideal. An empty base locus gives the unit ideal.
    """
    return base_ideal(phi).saturate(irrelevant_ideal(phi.source))


def saturate_by_components(ideal, components):
    """Saturate `ideal` by each of `components` in turn."""
    for c in components:
        ideal = ideal.saturate(c.set_ring(ideal.ring))
    return ideal


class BaseLocusCertificate(object):
    """The outcome of checking candidate components of a base locus.

    Attributes:
        contained: one flag per component, True when the component
            lies in the base locus.
        residual_dimension: projective dimension of what is left of the
            base locus once every component is saturated away.
    """

    def __init__(self, contained, residual_dimension):
        self.contained = list(contained)
        self.residual_dimension = residual_dimension

    @property
    def valid(self):
        return all(self.contained) and self.residual_dimension <= 0

    def __bool__(self):
        return self.valid

    def __repr__(self):
        return "BaseLocusCertificate(contained=%s, residual_dimension=%s)"\
            % (self.contained, self.residual_dimension)


def certify_base_components(phi, components):
    """Check that every ideal in `components` contains the forms of
    `phi` and that saturating the base ideal by all of them leaves a
    scheme of dimension at most zero.
    """
    components = [c.set_ring(phi.source) for c in components]
    forms = Ideal(phi.source, phi.forms)
    contained = [c.contains(forms) for c in components]
    residual = saturate_by_components(base_ideal(phi), components)
    residual = residual.saturate(irrelevant_ideal(phi.source))
    dim, _ = residual.dim_degree()
    logger.debug("Base locus of %s: containment %s, residual dimension %s",
        phi.name, contained, dim)
    return BaseLocusCertificate(contained, dim)
