from django.core.exceptions import ImproperlyConfigured
from stewart.conf import app_settings
from stewart.exceptions import PreconditionError


class TheoremCheckPool:

    USE_CACHE = True

    def __init__(self):
        self._checks_list = []

    def get_all_checks(self):
        """
        Returns all registered theorem checks, in the order of their configuration.
        """
        if not self.USE_CACHE or not self._checks_list:
            self._checks_list = [check_class() for check_class in app_settings.THEOREM_CHECKS]
            # check for uniqueness of the check's `identifier` attribute
            identifiers = [c.identifier for c in self._checks_list]
            for i in identifiers:
                if identifiers.count(i) > 1:
                    raise ImproperlyConfigured("Each theorem check requires a unique attribute 'identifier'.")
        return self._checks_list

    def get_identifiers(self):
        return [c.identifier for c in self.get_all_checks()]

    def get_check(self, identifier):
        """
        Return the theorem check object for the given identifier.
        """
        for check in self.get_all_checks():
            if check.identifier == identifier:
                return check
        msg = "Unknown theorem check '{}', choose one of: {}."
        raise PreconditionError(msg.format(identifier, ', '.join(self.get_identifiers())))

theorem_checks_pool = TheoremCheckPool()
