class Parameter:
    GAMMA = 'gamma'
    NU = 'nu'

    CHOICES = (
        (GAMMA, 'Genus deformation parameter'),
        (NU, 'Boundary deformation parameter'),
    )


FACTOR_SEPARATOR = ' | '
