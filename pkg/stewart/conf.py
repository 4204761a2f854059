class DefaultSettings:
    def _setting(self, name, default=None):
        from django.conf import settings
        return getattr(settings, name, default)

    @property
    def STEWART_STATE_CAP(self):
        """
        The maximum number of live states a product or subset construction may create before
        it gives up with :class:`stewart.exceptions.StateCapExceeded`.

        Defaults to one million. The ``cmp`` predicate needs far more than that, hence queries
        built on top of it only run with a raised cap.
        """
        from django.core.exceptions import ImproperlyConfigured

        cap = self._setting('STEWART_STATE_CAP', 10 ** 6)
        if not isinstance(cap, int) or cap < 1:
            raise ImproperlyConfigured("'STEWART_STATE_CAP' must be a positive integer.")
        return cap

    @property
    def STEWART_DEFAULT_BASE(self):
        """
        The numeration base used for variables without any base constraint, unless a query
        starts with a ``?lsd_k`` directive. The default is ``3``.
        """
        from django.core.exceptions import ImproperlyConfigured

        base = self._setting('STEWART_DEFAULT_BASE', 3)
        if not isinstance(base, int) or base < 2:
            raise ImproperlyConfigured("'STEWART_DEFAULT_BASE' must be an integer >= 2.")
        return base

    @property
    def STEWART_STRICT(self):
        """
        If ``True``, predicate aliases declared in ``STEWART_PREDICATE_ALIASES`` are rejected
        instead of being silently resolved. The default is ``False``.
        """
        return self._setting('STEWART_STRICT', False)

    @property
    def STEWART_PREDICATE_ALIASES(self):
        """
        Map of alias names onto predicate names. Some published queries call ``$link7``,
        which is never defined; by default it resolves to ``$link``.
        """
        aliases = {'link7': 'link'}
        aliases.update(self._setting('STEWART_PREDICATE_ALIASES', {}))
        return aliases

    @property
    def STEWART_WORD_AUTOMATA(self):
        """
        Word automata preloaded into every prover session, as a map from the name used in
        queries (``TP[t][n]``) onto the dotted path of a DFAO instance.
        """
        from django.utils.module_loading import import_string
        from django.core.exceptions import ImproperlyConfigured
        from stewart.automata.base import MultiTrackDfao

        paths = {'TP': 'stewart.automata.stewart.STEWART_AUTOMATON'}
        paths.update(self._setting('STEWART_WORD_AUTOMATA', {}))
        word_automata = {}
        for name, path in paths.items():
            automaton = import_string(path)
            if not isinstance(automaton, MultiTrackDfao):
                msg = "'{}' specified in STEWART_WORD_AUTOMATA is not a MultiTrackDfao."
                raise ImproperlyConfigured(msg.format(path))
            word_automata[name] = automaton
        return word_automata

    @property
    def STEWART_THEOREM_CHECKS(self):
        """
        Specifies the list of theorem checks run by ``./manage.py stewart check``. Each entry is
        the dotted path of a class inheriting from :class:`stewart.theorems.base.TheoremCheck`.
        """
        from django.core.exceptions import ImproperlyConfigured
        from django.utils.module_loading import import_string
        from stewart.theorems.base import TheoremCheck

        default = [
            'stewart.theorems.defaults.StewartAutomatonCheck',
            'stewart.theorems.defaults.PalindromeCheck',
            'stewart.theorems.defaults.CubeCheck',
            'stewart.theorems.defaults.CriticalExponentCheck',
            'stewart.theorems.defaults.SquareOrderCheck',
            'stewart.theorems.defaults.ComplexityCheck',
            'stewart.theorems.defaults.PatternCheck',
            'stewart.theorems.defaults.CommonFactorCheck',
            'stewart.theorems.defaults.AutomaticityCheck',
            'stewart.theorems.defaults.ProgressionCheck',
            'stewart.theorems.defaults.CoverageCheck',
            'stewart.theorems.defaults.CoverageOptimalityCheck',
        ]
        checks = []
        for path in self._setting('STEWART_THEOREM_CHECKS', default):
            check_class = import_string(path)
            if not issubclass(check_class, TheoremCheck):
                msg = "class {} specified in STEWART_THEOREM_CHECKS must inherit from 'TheoremCheck'."
                raise ImproperlyConfigured(msg.format(path))
            checks.append(check_class)
        return checks

    @property
    def STEWART_CHECK_LENGTH(self):
        """
        Upper bound on the length of pattern sequences swept exhaustively by the theorem checks.
        Defaults to ``5``, which keeps the full default suite within minutes.
        """
        return self._setting('STEWART_CHECK_LENGTH', 5)

    @property
    def STEWART_SAMPLE_LENGTHS(self):
        """
        Lengths of pattern sequences which are sampled rather than swept, using a seeded
        generator. Defaults to ``(6, 7)``.
        """
        return tuple(self._setting('STEWART_SAMPLE_LENGTHS', (6, 7)))

    @property
    def STEWART_SAMPLE_SIZE(self):
        """
        Number of seeded samples drawn for each of the ``STEWART_SAMPLE_LENGTHS``.
        """
        return self._setting('STEWART_SAMPLE_SIZE', 500)

    @property
    def STEWART_SEED(self):
        """
        Default seed for sampled sweeps. The seed actually used is always echoed in reports.
        """
        return self._setting('STEWART_SEED', 2021)

    def __getattr__(self, key):
        if not key.startswith('STEWART_'):
            key = 'STEWART_' + key
        return self.__getattribute__(key)

app_settings = DefaultSettings()
